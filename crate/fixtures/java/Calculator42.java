import java.util.Scanner;

/**
 * Calculator42 program.
 */
public class Calculator42 {
  public static int indexOf(int[] arr, int key) {
    for (int j = 0; j < arr.length; j++) {
      if (arr[j] == key) {
        return j;
      }
    }
    return -1;
  }

  public static void pattern(int height) {
    for (int row = 1; row <= height; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static int fibonacci(int num) {
    int first = 0;
    int second = 1;
    for (int j = 0; j < num; j++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  static int countVowels(String line) {
    int found = 0;
    for (int j = 0; j < line.length(); j++) {
      char ch = Character.toLowerCase(line.charAt(j));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        found++;
        break;
        default:
        break;
      }
    }
    return found;
  }

  public static String backwards(String line) {
    StringBuilder sb = new StringBuilder();
    for (int j = line.length() - 1; j >= 0; j--) {
      sb.append(line.charAt(j));
    }
    return sb.toString();
  }

  public static int toNumber(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static void countDown(int remaining) {
    do {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 6, 9, 2};
    int pos = indexOf(numbers, 5);
    System.out.println("Found at " + pos);
    pattern(6);
    System.out.println("Fib: " + fibonacci(11));
    System.out.println(countVowels("programming"));
    String rev = backwards("level");
    System.out.println(rev);
    int parsed = toNumber(" 7 ");
    System.out.println(parsed);
    countDown(3);
    sc.close();
  }
}
