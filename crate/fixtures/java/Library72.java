import java.util.ArrayList;
import java.util.Scanner;

public class Library72 {
  static int greatestDivisor(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static boolean isPalindrome(String input) {
    int left = 0;
    int right = input.length() - 1;
    while (left < right) {
      if (input.charAt(left) != input.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static int sumDigits(int n) {
    int total = 0;
    while (n > 0) {
      total += n % 10;
      n /= 10;
    }
    return total;
  }

  static ArrayList<Integer> collectEven(int[] data) {
    ArrayList<Integer> list = new ArrayList<>();
    for (int v : data) {
      if (v % 2 == 0) {
        list.add(v);
      }
    }
    return list;
  }

  static int maxValue(int[] data) {
    int max = data[0];
    for (int j = 1; j < data.length; j++) {
      if (data[j] > max) {
        max = data[j];
      }
    }
    return max;
  }

  public static int absolute(int n) {
    return n < 0 ? -n : n;
  }

  public static String reverse(String input) {
    StringBuilder builder = new StringBuilder();
    for (int j = input.length() - 1; j >= 0; j--) {
      builder.append(input.charAt(j));
    }
    return builder.toString();
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {8, 5, 7, 3, 8, 6};
    System.out.println("GCD: " + greatestDivisor(78, 42));
    System.out.println(isPalindrome("noon"));
    System.out.println("Digits: " + sumDigits(59416));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    System.out.println(absolute(-20));
    String rev = reverse("java");
    System.out.println(rev);
    sc.close();
  }
}
