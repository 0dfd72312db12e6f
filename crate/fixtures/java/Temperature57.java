import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

/**
 * Temperature57 program.
 */
public class Temperature57 {
  static void sort(int[] data) {
    for (int k = 0; k < data.length - 1; k++) {
      for (int m = 0; m < data.length - 1 - k; m++) {
        if (data[m] > data[m + 1]) {
          int temp = data[m];
          data[m] = data[m + 1];
          data[m + 1] = temp;
        }
      }
    }
  }

  static boolean even(int n) {
    return n % 2 == 0;
  }

  static ArrayList<Integer> collectEven(int[] data) {
    ArrayList<Integer> result = new ArrayList<>();
    for (int v : data) {
      if (v % 2 == 0) {
        result.add(v);
      }
    }
    return result;
  }

  public static int absolute(int n) {
    return n < 0 ? -n : n;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {7, 3, 5, 2, 9, 6, 7};
    sort(numbers);
    System.out.println(Arrays.toString(numbers));
    if (even(25)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(absolute(-14));
    sc.close();
  }
}
