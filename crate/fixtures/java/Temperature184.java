import java.util.ArrayList;
import java.util.Scanner;

public class Temperature184 {
  public static int absolute(int n) {
    return n < 0 ? -n : n;
  }

  public static int toNumber(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  static ArrayList<Integer> collectEven(int[] scores) {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : scores) {
      if (v % 2 == 0) {
        items.add(v);
      }
    }
    return items;
  }

  static boolean checkPrime(int n) {
    if (n < 2) {
      return false;
    }
    int div = 2;
    while (div * div <= n) {
      if (n % div == 0) {
        return false;
      }
      div++;
    }
    return true;
  }

  static int vowels(String line) {
    int count = 0;
    for (int k = 0; k < line.length(); k++) {
      char ch = Character.toLowerCase(line.charAt(k));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        count++;
        break;
        default:
        break;
      }
    }
    return count;
  }

  public static int indexOf(int[] scores, int wanted) {
    for (int k = 0; k < scores.length; k++) {
      if (scores[k] == wanted) {
        return k;
      }
    }
    return -1;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 3, 9, 8};
    System.out.println(absolute(7));
    int parsed = toNumber("42");
    System.out.println(parsed);
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    for (int q = 2; q < 21; q++) {
      if (checkPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    System.out.println(vowels("hello world"));
    int pos = indexOf(numbers, 1);
    System.out.println("Found at " + pos);
    sc.close();
  }
}
